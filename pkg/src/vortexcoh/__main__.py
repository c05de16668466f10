import sys

from vortexcoh.cli import main

sys.exit(main())
