"""civicqa: filterable semantic search and grounded answers over
public-consultation feedback."""

__version__ = "0.1.0"
