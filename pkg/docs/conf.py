# SPDX-FileCopyrightText: 2026 Blade-DLT contributors.
# SPDX-License-Identifier: MIT

"""Sphinx configuration."""

from blade_dlt import __version__

# -- General configuration ------------------------------------------------

extensions = [
    "sphinx.ext.autodoc",
    "sphinx.ext.coverage",
    "sphinx.ext.doctest",
    "sphinx.ext.intersphinx",
    "sphinx.ext.viewcode",
]

templates_path = ["_templates"]

source_suffix = ".rst"

master_doc = "index"

# General information about the project.
project = "Blade-DLT"
copyright = "2026, Blade-DLT contributors"
author = "Blade-DLT contributors"

version = __version__
release = version

language = "en"

exclude_patterns = ["_build"]

pygments_style = "sphinx"

todo_include_todos = False


# -- Options for HTML output ----------------------------------------------
html_theme = "alabaster"

html_theme_options = {
    "description": "Delay-line test of Blade bundled-data pipelines.",
    "show_powered_by": False,
}

html_sidebars = {
    "**": [
        "about.html",
        "navigation.html",
        "relations.html",
        "searchbox.html",
    ]
}

htmlhelp_basename = "blade-dlt_namedoc"

# -- Options for manual page output ---------------------------------------

man_pages = [(master_doc, "blade-dlt", "Blade-DLT Documentation", [author], 1)]


intersphinx_mapping = {
    "python": ("https://docs.python.org/3", None),
    "click": ("https://click.palletsprojects.com/en/stable/", None),
    "flask": ("https://flask.palletsprojects.com/en/stable/", None),
}

# Autodoc configuraton.
autoclass_content = "both"
autodoc_member_order = "bysource"
