import sys

from plantedmaps.cli import main

sys.exit(main())
