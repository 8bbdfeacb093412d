"""Multi-layer diffusion network features and disinformation classification."""

from ._core import (
    DiffnetError,
    LogisticModel,
    MultiLayerNetwork,
    TweetRecord,
    __version__,
    auroc,
    average_clustering,
    build_network,
    chi2_scores,
    cross_validate,
    default_generator_config,
    density,
    diameter,
    feature_names,
    generate_corpus,
    ks_two_sample,
    layer_features,
    main_kcore_number,
    parse_records,
    strongly_connected_components,
    structural_virality,
    train_logistic,
    weakly_connected_components,
)

__all__ = [
    "DiffnetError",
    "LogisticModel",
    "MultiLayerNetwork",
    "TweetRecord",
    "auroc",
    "average_clustering",
    "build_network",
    "chi2_scores",
    "cross_validate",
    "default_generator_config",
    "density",
    "diameter",
    "feature_names",
    "generate_corpus",
    "ks_two_sample",
    "layer_features",
    "main_kcore_number",
    "parse_records",
    "strongly_connected_components",
    "structural_virality",
    "train_logistic",
    "weakly_connected_components",
]
