#define TNUM_TSKID	1
#define TSKID_1	1
#define TNUM_SEMID	0
#define TNUM_DTQID	0
#define TNUM_ISRID	1
#define ISRID_tISR_SIOPortTarget1_ISRInstance	1
#define TNUM_INIRTN	2
#define TNUM_TERRTN	2
