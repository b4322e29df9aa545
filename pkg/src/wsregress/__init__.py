"""Regression test selection for SOAP web services driven by WSDL and code changes."""

__version__ = "0.1.0"
