"""fairmeta: LLM-assisted FAIR metadata toolkit for dataspaces."""

__version__ = "0.1.0"
