"""
Command module serving the mission use cases over HTTP.
"""
from typing import Optional

from ...service import create_app


def serve(host: str = "127.0.0.1", port: int = 5000, secret_key: Optional[str] = None,
          debug: bool = False):
    """
    Build the mission service and run Flask's server.

    Parameters
    ----------
    host : str
        Interface to bind.
    port : int
        TCP port.
    secret_key : str, optional
        Value of Flask's SECRET_KEY.
    debug : bool
        Run Flask in debug mode.
    """
    app = create_app(secret_key=secret_key)
    app.run(host=host, port=port, debug=debug)
