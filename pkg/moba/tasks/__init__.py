"""Task units for weight runs."""
