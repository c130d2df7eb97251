"""Gap probabilities for the Airy, Painleve-II and Painleve-XXXIV kernels."""

__version__ = "0.1.0"
