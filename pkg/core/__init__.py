"""Core functionality for component-split.

This package contains:
- config: Environment settings and JSON report persistence
- errors: Exception hierarchy
- report: JSON documents for the CLI
- suites: Verification suites and their runner
"""
