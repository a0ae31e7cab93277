#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""
settings.py

Runtime defaults for the certificate engine, read once at import.

ENV (via .env):
  NULLA_MAX_VERTICES=20          oracle guard on vertex count
  NULLA_MAX_EDGES=20             oracle guard on edge count
  NULLA_MAX_ASSIGNMENTS=2000000  guard on brute-force colorings / vertex maps
  NULLA_MAX_COLUMNS=500000       NulLA matrix column cap
  NULLA_LOG_LEVEL=WARNING
  NULLA_PROGRESS=0               1 shows tqdm bars during degree ascent
"""

import os

from dotenv import load_dotenv
load_dotenv()

# -------------------- guards --------------------

MAX_VERTICES = int(os.getenv("NULLA_MAX_VERTICES", "20"))
MAX_EDGES = int(os.getenv("NULLA_MAX_EDGES", "20"))
MAX_ASSIGNMENTS = int(os.getenv("NULLA_MAX_ASSIGNMENTS", "2000000"))
MAX_COLUMNS = int(os.getenv("NULLA_MAX_COLUMNS", "500000"))

# -------------------- output --------------------

LOG_LEVEL = os.getenv("NULLA_LOG_LEVEL", "WARNING").upper()
PROGRESS = os.getenv("NULLA_PROGRESS", "0") == "1"
