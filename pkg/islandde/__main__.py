"""Allow ``python -m islandde``."""

import sys

from islandde.cli import main

sys.exit(main())
