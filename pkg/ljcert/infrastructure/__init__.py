"""Infrastructure components (settings, user paths)."""
