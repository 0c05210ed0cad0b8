"""fusionaudit: exact computations in finite groupoid-graded vector spaces.

The package realizes a finite semisimple monoidal category concretely
(objects are multiplicity vectors over the morphisms of a finite groupoid,
maps are per-grade rational matrices) and audits, with machine-checkable
witnesses, the equivalent characterizations of when such a category has a
simple tensor unit.
"""

__version__ = "0.1.0"
