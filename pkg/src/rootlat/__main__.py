import sys

from rootlat.cli import main

sys.exit(main())
