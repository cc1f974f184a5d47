import os
import sys

# ctest points this at the in-tree build; an installed package needs nothing
_build = os.environ.get("VICOLOR_PYTHON_DIR")
if _build:
    sys.path.insert(0, _build)
