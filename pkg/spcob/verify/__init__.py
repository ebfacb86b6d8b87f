from spcob.verify.suite import Limits, battery, run_all

__all__ = ["Limits", "battery", "run_all"]
