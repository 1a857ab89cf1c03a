"""Exact computation in the C2 spider and the Sp(4) level-k modular category.

Subpackages by concern:

* :mod:`c2spider.ring` -- exact scalars (Laurent polynomials, rational
  functions, cyclotomic numbers).
* :mod:`c2spider.web` -- planar webs as combinatorial maps and the
  face-rewriting evaluation engine.
* :mod:`c2spider.rules_data` -- the frozen relation table the engine runs on
  (machine-derived, audit with ``c2spider web rules``).
* :mod:`c2spider.clasp` -- quantum projectors of type (n,0): recursive
  expansion, annihilation axioms, traces and theta networks.
* :mod:`c2spider.cat` -- weights, quantum dimensions, fusion rules and
  modular S/T data of the level-k category.
* :mod:`c2spider.tqft` -- state spaces of surfaces via admissible labelings
  and the torus mapping-class representation with curve operators.
* :mod:`c2spider.faithful` -- graph-geodesic walks, comparison labelings,
  minimal detection levels and detection certificates.
"""

__version__ = "0.1.0"
