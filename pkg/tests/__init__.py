"""Test suite for component-split."""
