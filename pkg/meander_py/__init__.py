"""meander-py: index and Frobenius classification of seaweed subalgebras of sl(n) via meanders."""

__version__ = "0.1.0"
__author__ = "meander-py contributors"
