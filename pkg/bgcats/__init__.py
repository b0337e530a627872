"""bgcats: Barut-Girardello coherent states and squared-amplitude cat states."""

__version__ = "0.1.0"
