import sys

from ghcodes.cli import main

sys.exit(main())
