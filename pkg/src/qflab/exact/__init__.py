from .fields import ExtensionField, Field, PrimeField, Rationals, Ring, ext_field
from .poly import MultiPoly, PolyRing, divmod_poly, exact_div, monomials_up_to, poly_derivative, poly_gcd
from .ratfunc import RatFunc, RatFuncField, ratfunc_arith, ratfunc_derivative
from .exterior import ExteriorAlgebra, ExteriorElement, as_dual, dual_numbers, dual_shift

__all__ = [
    "ExtensionField", "Field", "PrimeField", "Rationals", "Ring", "ext_field",
    "MultiPoly", "PolyRing", "divmod_poly", "exact_div", "monomials_up_to", "poly_derivative", "poly_gcd",
    "RatFunc", "RatFuncField", "ratfunc_arith", "ratfunc_derivative",
    "ExteriorAlgebra", "ExteriorElement", "as_dual", "dual_numbers", "dual_shift",
]
