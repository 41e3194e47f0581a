"""
Wave family tags
A RIGHT wave is entered by fluid from the right (ahead state = right
Riemann state) and travels with xi_plus; LEFT mirrors it with xi_minus.
"""

from enum import Enum


class Family(str, Enum):
    LEFT = "left"
    RIGHT = "right"

    @property
    def sign(self) -> int:
        """+1 for the xi_plus family, -1 for the xi_minus family"""
        return 1 if self is Family.RIGHT else -1
