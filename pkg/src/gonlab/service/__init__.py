from .app import create_app
from .sessions import GameSession, SessionStore

__all__ = ["create_app", "GameSession", "SessionStore"]
