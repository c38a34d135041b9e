#!/usr/bin/env python3
"""
Startup script for the homimage command-line tool
"""
import sys

from homimage.cli.main import main

if __name__ == "__main__":
    sys.exit(main())
