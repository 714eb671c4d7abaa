from .catalog import fibration_targets, natural_projection_base
from .centers import admissible_centers, zero_degree_centers
from .classification import (
    Classification, classify_all, factors_through_natural_projection, has_elliptic_fibration,
)
from .search import ChainSearch, find_chains
