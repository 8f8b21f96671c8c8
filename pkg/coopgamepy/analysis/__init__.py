from .sweep import SWEEP_COLUMNS, pipeline_record, sweep_normalized

__all__ = ['SWEEP_COLUMNS', 'pipeline_record', 'sweep_normalized']
