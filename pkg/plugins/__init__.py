"""Plugins directory package."""
