"""Van Vleck polynomials of Lame equations and their limiting root density.

Submodules
----------
cubic            real cubics, exponent triples, family selectors
tridiag          tridiagonal eigenproblem for the Van Vleck roots
specfun          AGM, complete elliptic K, F(1/2, 1/2, 1; z), singular quadrature
density          the limiting density, its CDF, Heun residual, indicial exponents
measures         root-counting measures, KS distance, histograms
families         the eight Lame families and the t -> E map
complex_explore  root scatters for cubics with complex roots
cli              command-line front end
"""

from .cubic import (
    LAME_EXPONENTS,
    Cubic,
    ExponentTriple,
    FamilyKappa,
    LinearCoefficient,
    effective_exponents,
    linear_coefficient,
    make_cubic,
)
from .complex_explore import (
    ComplexCubic,
    PolynomialCoefficients,
    aberth_roots,
    parse_complex,
    scatter,
    sp_coefficients,
)
from .density import (
    FORMULAS,
    DensityModel,
    NuBounds,
    band,
    cdf,
    heun_residual,
    indicial_exponents,
    limit_coeffs,
    log_asymptote,
    nu_bounds,
    omega,
    rho,
)
from .errors import LameSpecError
from .families import (
    SIGMA,
    FamilySpectrum,
    energy_from_t,
    family_count,
    family_degree,
    family_spectrum,
    union_spectrum,
    verify_lame_residual,
)
from .measures import EmpiricalMeasure, Histogram, empirical, histogram, ks_distance
from .specfun import (
    QuadratureSpec,
    agm,
    ellipK,
    ellipK_imag,
    f_half,
    f_half_quadrature_oracle,
    quad_singular,
)
from .tridiag import (
    SolutionVector,
    TridiagSpec,
    build_tridiag,
    check_psi_positivity,
    eigenvalues,
    null_vector,
    sp_eval,
    van_vleck_roots,
)

__version__ = "0.1.0"

__all__ = [
    "aberth_roots",
    "agm",
    "band",
    "build_tridiag",
    "cdf",
    "check_psi_positivity",
    "ComplexCubic",
    "Cubic",
    "DensityModel",
    "effective_exponents",
    "eigenvalues",
    "ellipK",
    "ellipK_imag",
    "empirical",
    "EmpiricalMeasure",
    "energy_from_t",
    "ExponentTriple",
    "f_half",
    "f_half_quadrature_oracle",
    "family_count",
    "family_degree",
    "family_spectrum",
    "FamilyKappa",
    "FamilySpectrum",
    "FORMULAS",
    "heun_residual",
    "histogram",
    "Histogram",
    "indicial_exponents",
    "ks_distance",
    "LAME_EXPONENTS",
    "LameSpecError",
    "limit_coeffs",
    "linear_coefficient",
    "LinearCoefficient",
    "log_asymptote",
    "make_cubic",
    "nu_bounds",
    "NuBounds",
    "null_vector",
    "omega",
    "parse_complex",
    "PolynomialCoefficients",
    "quad_singular",
    "QuadratureSpec",
    "rho",
    "scatter",
    "SIGMA",
    "SolutionVector",
    "sp_coefficients",
    "sp_eval",
    "TridiagSpec",
    "union_spectrum",
    "van_vleck_roots",
    "verify_lame_residual",
]
