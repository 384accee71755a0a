"""
Утилиты для frontend
"""
