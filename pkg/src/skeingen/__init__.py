"""skeingen - Exact computations in Kauffman bracket skein modules.

This package computes finite generating sets of the skein module of the
surgery manifolds M(alpha, beta, gamma), verifies the twist expansions and
handle-slide rewrites behind them, and checks the SL(2) character data of
the binary icosahedral group over Q(zeta_5).

Example:
    $ skeingen gens --alpha 2 --beta -2 --gamma 2
    $ skeingen lemmas --max-twist 8
    $ skeingen charvar --format json
"""

__version__ = "0.1.0"

from skeingen.core.exceptions import (
    ConfigurationError,
    InvalidParametersError,
    RelationError,
    SkeinError,
    TwistError,
    VerificationError,
)

__all__ = [
    "ConfigurationError",
    "InvalidParametersError",
    "RelationError",
    "SkeinError",
    "TwistError",
    "VerificationError",
    "__version__",
]
