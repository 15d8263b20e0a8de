class EntityType:
    METRIC_VALUE = 'metric_value'
    SIM_RECORD = 'sim_record'
    TRIAL_SUMMARY = 'trial_summary'
    LOSS_SUMMARY = 'loss_summary'
    CATEGORY_AP = 'category_ap'
    EVAL_SUMMARY = 'eval_summary'
    GRAD_CHECK = 'grad_check'
    BENCHMARK = 'benchmark'
