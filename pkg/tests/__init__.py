"""Tests package for sensorfit."""
