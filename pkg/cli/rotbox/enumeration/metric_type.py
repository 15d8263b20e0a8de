class MetricType:
    ROTATED_IOU = 'rotated_iou'
    GIOU = 'giou'
    DIOU = 'diou'
    CIOU = 'ciou'
    EIOU = 'eiou'
    FPDIOU = 'fpdiou'
    GWD = 'gwd'
    KLD = 'kld'
    KFIOU = 'kfiou'
    PIOU = 'piou'
    SMOOTH_L1 = 'smooth_l1'

    ALL_METRICS = [ROTATED_IOU, GIOU, DIOU, CIOU, EIOU, FPDIOU, GWD, KLD, KFIOU, PIOU]
    ALL_LOSSES = ALL_METRICS + [SMOOTH_L1]
    SYMMETRIC = [ROTATED_IOU, GIOU, DIOU, CIOU, EIOU, FPDIOU, GWD, KFIOU, PIOU]
    NEEDS_IMAGE_DIMS = [FPDIOU, KFIOU]
    MATCHING = [ROTATED_IOU, FPDIOU]
