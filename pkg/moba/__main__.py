import sys

from moba.cli import main

sys.exit(main())
