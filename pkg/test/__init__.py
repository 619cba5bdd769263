"""Test suite for quartaut."""
