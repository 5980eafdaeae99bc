# Sphinx configuration of the kneser-tw documentation.
# Options: https://www.sphinx-doc.org/en/master/usage/configuration.html
import os
import sys

from kneser_tw import __version__

sys.path.insert(0, os.path.abspath("."))

# -- Project -----------------------------------------------------------------

project = "kneser-tw"
copyright = "2026, The kneser-tw developers"
author = "The kneser-tw developers"
release = __version__

# -- Build -------------------------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.napoleon",
    "sphinx.ext.intersphinx",
    "sphinx_rtd_theme",
    "sphinx-prompt",
    "sphinx_argparse_cli",
    "sphinxcontrib.programoutput",
    "myst_parser",
]

root_doc = "index"
templates_path = ["_templates"]
exclude_patterns = ["_build"]

autoclass_content = "both"
autodoc_member_order = "bysource"
myst_heading_anchors = 3

intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "networkx": ("https://networkx.org/documentation/stable/", None),
    "numpy": ("https://numpy.org/doc/stable/", None),
}

# -- Output ------------------------------------------------------------------

html_theme = "sphinx_rtd_theme"

latex_documents = [
    (root_doc, "kneser-tw.tex", "kneser-tw", author, "manual"),
]
