"""Exact models of the minimal representation of osp(m,2|2n).

Subpackage map:

- ``scalars``      exact Gaussian rationals and the pi-graded ring
- ``algebra``      superpolynomials, derivations, Bessel operators
- ``quotient``     normal forms modulo the ideal generated by R^2
- ``harmonics``    spherical harmonics and Fischer decomposition
- ``liealg``       spin-factor Jordan superalgebra, TKK algebra, Cayley map
- ``schrodinger``  the module W of polynomial-times-exponential functions
- ``integral``     exact Berezin/sphere/radial integration on W
- ``fock``         Bessel-Fischer product, kernels, the Fock action
- ``sbtransform``  Segal-Bargmann transform, inverse, Hermite functions
- ``specfun``      floating-point Bessel/Laguerre sanity evaluations
- ``cli``          verification driver
"""

__version__ = "0.1.0"
