# ih_calculator/constants.py

"""Shared constants for the ih_calculator package."""

# Route names reported in the provenance of a Schubert IH computation
ROUTE_CHEEGER = "cheeger"
ROUTE_F1 = "f1"
ROUTE_F2 = "f2"
ROUTE_F3 = "f3"
ROUTE_GENERIC = "generic"

# Process exit statuses
EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

# Output formats
FORMAT_TEXT = "text"
FORMAT_STRUCTURED = "structured"
OUTPUT_FORMATS = (FORMAT_TEXT, FORMAT_STRUCTURED)

# Sweep export formats
EXPORT_FORMATS = ("csv", "json", "html")

# Hypothesis that the engine cannot check from Betti data alone
ASSUMED_CUP_PRODUCT_SURJECTIVITY = (
    "cup product with the normal-bundle Chern class surjects in the fiber cohomology"
)
GENERIC_HYPERSURFACE_CAVEAT = (
    "X is assumed to be a general hypersurface containing the threefold {t1 = t2 = 0}"
)
