"""
springstack — Stacking of standard tableaux and Springer fibres of induced orbits.

Stack one standard tableau per Levi block, induce nilpotent orbits, and check
the stacking theorem on explicit flags over a finite field.

Usage::

    import springstack
    from springstack import LeviDatum, StandardTableau

    d = LeviDatum.parse("2,1;1,1")
    sigmas = [StandardTableau.parse("[[1,3],[2]]"), StandardTableau.parse("[[1],[2]]")]
    springstack.stack(d, sigmas)            # [[1,3,4],[2,5]]
    springstack.mu_sigma(d)                 # (3,2)

    # The flags behind the stacking theorem
    rep = springstack.build_representative(d, p=2)
    flag = springstack.ls_map(d, springstack.representative_flags(rep, sigmas))
    springstack.spaltenstein_map(rep.e, flag)   # [[1,3,4],[2,5]] again

    # Enumeration ceilings
    springstack.init(max_flags=1_000_000)

    # A verification campaign
    reports = springstack.verify(max_n=4)
"""

from __future__ import annotations

__version__ = "0.1.0"
__all__ = [
    "init",
    "verify",
    "Partition",
    "Composition",
    "LeviDatum",
    "StandardTableau",
    "mu_sigma",
    "stack",
    "compare",
    "enumerate_standard",
    "build_representative",
    "spaltenstein_map",
    "enumerate_fibre",
    "ls_map",
    "representative_flags",
    "SpringstackError",
    "CeilingExceededError",
]

from springstack.errors import CeilingExceededError, SpringstackError
from springstack.partitions import Composition, LeviDatum, Partition, mu_sigma
from springstack.reports import ClaimReport
from springstack.settings import init
from springstack.springer import (
    build_representative,
    enumerate_fibre,
    ls_map,
    representative_flags,
    spaltenstein_map,
)
from springstack.tableaux import StandardTableau, compare, enumerate_standard, stack


def verify(max_n: int = 5, primes: tuple[int, ...] = (2,), claims: tuple[str, ...] = (), seed: int = 0) -> list[ClaimReport]:
    """Run a verification campaign and return its reports, sorted by claim id.

    Example::

        failed = [r for r in springstack.verify(max_n=4) if r.status == "fail"]
    """
    from springstack.harness import CampaignConfig, run_campaign

    return run_campaign(CampaignConfig(max_n=max_n, primes=primes, claims=claims, seed=seed))
