import sys

from seqalg.cli.main import main

sys.exit(main())
