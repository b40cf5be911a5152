"""Algorithm and benchmark services."""
