#!/usr/bin/env python3
"""
mimp-proofs - minimal implicational proof toolkit
Entry point for the command line
"""

import os
import sys

# Add project root to path
project_root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
sys.path.insert(0, project_root)

from cli.app import run


def main():
    """Main application entry point"""
    sys.exit(run(sys.argv[1:]))


if __name__ == '__main__':
    main()
