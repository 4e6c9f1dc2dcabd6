import sys

from partmaps.cli import main

sys.exit(main())
