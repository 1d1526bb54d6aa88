# Shared module init
from shared.context import ConvexifyContext

__all__ = ["ConvexifyContext"]
