"""gammaext: exact mod-p workbench for divided powers, Schur algebras,
functor homology and Ext tables."""

__version__ = "0.1.0"
