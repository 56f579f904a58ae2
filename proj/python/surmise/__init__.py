"""Prerequisite hierarchies among targets from 0/1 judgment tables."""

from ._surmise import (
    Analysis,
    ConstraintError,
    Flexibility,
    HasseDiagram,
    InputError,
    InvariantError,
    JudgmentTable,
    KnowledgeStructure,
    OrderMatrix,
    PairCounts,
    PlantedPoset,
    analyze,
    equivalence_classes,
    flexible_leq,
    order_matrix,
    parse_csv,
    random_poset,
    run_cli,
    sample_models,
    transitive_reduction,
)

__all__ = [
    "Analysis",
    "ConstraintError",
    "Flexibility",
    "HasseDiagram",
    "InputError",
    "InvariantError",
    "JudgmentTable",
    "KnowledgeStructure",
    "OrderMatrix",
    "PairCounts",
    "PlantedPoset",
    "analyze",
    "equivalence_classes",
    "flexible_leq",
    "order_matrix",
    "parse_csv",
    "random_poset",
    "run_cli",
    "sample_models",
    "transitive_reduction",
]
