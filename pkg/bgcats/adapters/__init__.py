"""Driven adapters: logging, configuration and record output."""
