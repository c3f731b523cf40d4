"""Test suite for the spinbrauer project."""
