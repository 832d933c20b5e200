"""Exact arithmetic for sphere classes and cyclic-action fixed points on rational 4-manifolds.

The package is organised around five pieces of machinery:

* :mod:`rational4.lattice` -- the intersection lattice of CP^2 # N CP^2-bar,
  reflections and canonical forms of class tuples;
* :mod:`rational4.cyclotomic` -- exact arithmetic in cyclotomic fields,
  including exact values of cot/csc/cos/sin at rational angles;
* :mod:`rational4.areafeas` -- exact rational feasibility of symplectic-area
  constraint systems;
* :mod:`rational4.spheres` -- enumeration of homology classes of symplectic
  spheres of negative self-intersection;
* :mod:`rational4.gindex` -- equivariant index computations (Lefschetz,
  signature, Spin) and fixed-point profile searches;
* :mod:`rational4.configs` / :mod:`rational4.props` -- disjoint-configuration
  classification and the bundled non-existence verifiers.
"""

from rational4.lattice import HClass, BlowupLattice

__all__ = ["HClass", "BlowupLattice"]
__version__ = "0.1.0"
