import sys

from ljcert.app.cli.main import main

sys.exit(main())
