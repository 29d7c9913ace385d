"""証明書の組み立てとオーケストレーション"""
