"""pathonto: compile BioPAX pathway instances into a classes-only ontology."""

__version__ = "0.1.0"
