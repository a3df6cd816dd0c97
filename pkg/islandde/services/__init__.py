"""Services for the package."""
