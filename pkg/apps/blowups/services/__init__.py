from .identities import KNOWN_IDENTITIES, IntersectionIdentity, evaluate_identity
from .intersection import (
    DivisorClass, TowerContext, anticanonical_class, anticanonical_cube,
    tower_context, triple_product,
)
from .kawamata import BlowupResult, full_expansion, kawamata_blowup
