"""Exact computation with finite nilpotent commutative structures over GF(p).

Submodules:
  exactlin   scalars mod p, matrices, RREF, subspace lattice
  semigroups finite commutative semigroups with zero and congruence quotients
  algebras   finite-dimensional algebras by structure constants
  powermaps  Frobenius and general power maps, images, root sections, reports
  explorer   presentation sweeps ranking the deficit n*|S^(n)-0| - |S-0|
  cli        the ``eggert`` command line
"""

__version__ = "0.1.0"
