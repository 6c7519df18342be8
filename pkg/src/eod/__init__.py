"""eod: a self-hostable catalogue service for Earth-observation datasets."""

__version__ = "0.1.0"
