"""Near-multicollinearity diagnostics for linear regression designs."""

from ._core import (
    Design,
    NotApplicableError,
    SingularMatrixError,
    cn,
    cns,
    cv,
    fixture_names,
    ki,
    load_csv,
    load_fixture,
    multicol,
    ols,
    perturb_n,
    proportion_of_ones,
    rdetr,
    slm,
    vif,
)

__all__ = [
    "Design",
    "NotApplicableError",
    "SingularMatrixError",
    "cn",
    "cns",
    "cv",
    "fixture_names",
    "ki",
    "load_csv",
    "load_fixture",
    "multicol",
    "ols",
    "perturb_n",
    "proportion_of_ones",
    "rdetr",
    "slm",
    "vif",
]
