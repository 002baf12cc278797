"""Stretched Kostka numbers for classical root systems and their degrees."""

from .rootsys import (
    NotDominating,
    RootSystem,
    UnsupportedRootSystem,
    WeylGroupTooLarge,
    build_root_system,
    subsystem,
    weyl_group,
)
from .multiplicity import kostant_partition, kostka_kostant, kostka_ssyt, stretched_samples

__all__ = [
    "NotDominating",
    "RootSystem",
    "UnsupportedRootSystem",
    "WeylGroupTooLarge",
    "build_root_system",
    "subsystem",
    "weyl_group",
    "kostant_partition",
    "kostka_kostant",
    "kostka_ssyt",
    "stretched_samples",
]
