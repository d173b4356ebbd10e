"""Unit test package for avoidpath."""
