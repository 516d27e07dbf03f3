"""Tokenizer-based single-channel RF source separation at desk scale."""

__version__ = "0.1.0"
