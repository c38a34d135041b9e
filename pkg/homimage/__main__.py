import sys

from homimage.cli.main import main

sys.exit(main())
