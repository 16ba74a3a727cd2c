"""Kernel backend selection.

``paraq._kern`` exists both as source and (after a build) as a compiled
extension; the extension shadows the source on import.  Setting
``PARAQ_PURE=1`` forces the interpreted kernel.  ``load_pure_kernel()``
loads the source file as a separate module so both flavours can be compared
side by side (parity tests, benchmark).
"""

import importlib.machinery
import importlib.util
import os
import sys
from pathlib import Path

_KERN_SOURCE = Path(__file__).with_name("_kern.py")


def load_pure_kernel(name: str = "paraq._kern_pure"):
    """Load the interpreted kernel from source, regardless of any build."""
    if name in sys.modules:
        return sys.modules[name]
    loader = importlib.machinery.SourceFileLoader(name, str(_KERN_SOURCE))
    spec = importlib.util.spec_from_loader(name, loader)
    mod = importlib.util.module_from_spec(spec)
    sys.modules[name] = mod
    loader.exec_module(mod)
    return mod


if os.environ.get("PARAQ_PURE"):
    kern = load_pure_kernel()
else:
    from . import _kern as kern  # compiled extension if built, else source

BACKEND = "compiled" if kern.COMPILED else "python"
