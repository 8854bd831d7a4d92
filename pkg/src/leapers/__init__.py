"""Grid embeddings into leaper graphs, and forced-chord experiments."""

__version__ = "0.1.0"
