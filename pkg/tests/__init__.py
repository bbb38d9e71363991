"""Tests for Tiny-Graph-RAG."""
