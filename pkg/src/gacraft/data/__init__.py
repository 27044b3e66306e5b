"""Bundled data files: the function registry and the benchmark dataset."""
