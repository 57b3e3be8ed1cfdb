"""
claims.py — Built-in table of the statements the harness checks.

Each claim id maps to exactly one anchor: a short statement of what is
checked. The table is embedded in every campaign report header.
"""

from __future__ import annotations

from springstack.errors import ConfigError

OUT_OF_SCOPE = "out of scope — closure"

# fmt: off
# claim id → (anchor, evidence mode)
CLAIMS: dict[str, tuple[str, str]] = {
    # combinatorics of partitions
    "cor-partitionsigma":  ("induced partition μ^Σ equals the transpose of the sorted concatenation of the μ_i^⊤",  "exhaustive"),
    "lem-codim":           ("induction preserves codimension: dim g^e = Σ dim g_0^{e_0} over the blocks",            "exhaustive"),
    "lem-dimension":       ("dim 𝓑_e = (dim g^e − N)/2 and induction preserves Springer fibre dimension",           "exhaustive"),
    "lem-inducedfromzero": ("inducing the zero orbit of the Levi of shape λ gives the transpose of sorted λ",          "exhaustive"),
    "lem-transitivity":    ("induction in stages through any consecutive regrouping of blocks gives μ^Σ",             "exhaustive"),
    # tableaux
    "rem-associativity":   ("stacking is associative: staged stacking through any regrouping equals one-shot stacking", "exhaustive"),
    # linear algebra
    "lem-rep-type":        ("e = e_0 + e_1 has Jordan type μ^Σ and e_0 restricted to V_i has type μ_i",               "exhaustive"),
    "lem-spaltenstein":    ("restriction to an e-stable hyperplane removes the last box of column j, j maximal with H ⊇ ker e^{j-1}", "exhaustive"),
    # fibres and the LS map
    "fibre-classes":       ("the Spaltenstein classes X_σ partition the 𝔽_p-points of 𝓑_e",                            "exhaustive"),
    "prop-LSmap":          ("Φ(LS(F^(1),…,F^(n))) ≥ stk(Φ_0(F^(1),…,F^(n))) for every blockwise fibre tuple",          "exhaustive"),
    "thm-stack":           ("Φ(LS(representative flags of (σ_1,…,σ_n))) = stk(σ_1,…,σ_n)",                           "exhaustive"),
    "prop-equivariance":   ("Φ and the LS map commute with block-upper-triangular changes of basis",                  "random"),
    "ex-counterexample":   ("in gl_5 the LS image of X_{σ_1,σ_2} is not contained in X_{stk(σ_1,σ_2)}",               "single"),
    # Zariski topology
    "lem-closure":         ("components are the closures C_σ of X_σ, and X_σ ∩ closure(X_τ) = ∅ for τ < σ",           "out-of-scope"),
}
# fmt: on


def get_anchor(claim_id: str) -> str:
    """Return the anchor of ``claim_id``; unknown ids raise ConfigError."""
    try:
        return CLAIMS[claim_id][0]
    except KeyError:
        raise ConfigError(
            f"unknown claim {claim_id!r}; known claims: {', '.join(list_claims())}"
        ) from None


def get_mode(claim_id: str) -> str:
    get_anchor(claim_id)
    return CLAIMS[claim_id][1]


def list_claims() -> list[str]:
    """Return the sorted list of known claim ids."""
    return sorted(CLAIMS)


def anchors() -> dict[str, str]:
    return {claim_id: CLAIMS[claim_id][0] for claim_id in list_claims()}


def select(selectors: list[str] | None) -> list[str]:
    """Resolve claim selectors; each is an id or a prefix like ``"lem-"``."""
    if not selectors:
        return list_claims()
    chosen: set[str] = set()
    for selector in selectors:
        matched = [c for c in CLAIMS if c == selector or c.startswith(selector)]
        if not matched:
            get_anchor(selector)
        chosen.update(matched)
    return sorted(chosen)
