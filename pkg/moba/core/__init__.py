"""Configuration, logging, errors, random streams and bounds."""
