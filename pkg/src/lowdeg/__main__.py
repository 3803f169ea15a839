import sys

from lowdeg.cli import main

sys.exit(main())
