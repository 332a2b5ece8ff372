"""Exact Hirzebruch genera, Pontryagin numbers and bundle-parameter bookkeeping."""
from .numeric import (
    Genus,
    Rational,
    TruncatedSeries,
    bernoulli,
    char_series,
    series_exp,
    series_log,
    series_product,
    series_reciprocal,
    unsigned_bernoulli,
)
from .symfunc import GradedPolynomial, Partition, graded_exp, graded_multiply, partitions, power_sum_in_elementary
from .genera import (
    MultiplicativeSequence,
    closed_form_leading,
    genus_sequence,
    leading_coefficient,
    mixed_coefficient,
    multiplicative_sequence,
    verify_product_identity,
)
from .manifolds import FormalManifold, ahat, ahat_under_zero_signature, genus, lemma24_matrix, signature
from .bundles import (
    BundleParams,
    InvalidParameters,
    closing_check,
    kappa_pairing,
    search,
    table_row,
    total_space_model,
    validate,
)
from .conclusions import bew_degree_set, cohomology_degrees, hurewicz_homotopy_set, theorem_conclusion

__version__ = "0.1.0"
