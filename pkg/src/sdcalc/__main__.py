import sys

from sdcalc.cli import main

sys.exit(main())
