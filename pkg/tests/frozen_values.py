"""Values frozen from the shooting oracles in ``oracles.py``; regenerate
with ``freeze_oracles.py``."""

CRITICAL = {0.5235987755982988: (0.03370928977971015, 0.003466092811925268),
 0.7853981633974483: (0.12365375711718432, 0.02249577417405159),
 1.0471975511965976: (0.3422275146049198, 0.09877749524390989)}

PSI1_ZERO = {(0.001, 0.5235987755982989): 1.0403991292969614,
 (0.001, 0.7853981633974483): 0.7825869075616547,
 (0.001, 1.0471975511965979): 0.5222693614046097,
 (0.01, 0.5235987755982989): 0.9881799081661413,
 (0.01, 0.7853981633974483): 0.7587001675855807,
 (0.01, 1.0471975511965979): 0.5106441270440323,
 (0.1, 0.5235987755982989): 0.7319848695883026,
 (0.1, 0.7853981633974483): 0.5970907992001562,
 (0.1, 1.0471975511965979): 0.4189978392490506,
 (1.0, 0.5235987755982989): 0.2163475883157005,
 (1.0, 0.7853981633974483): 0.1807519324605127,
 (1.0, 1.0471975511965979): 0.13044363676608423,
 (10.0, 0.5235987755982989): 0.002937981472651677,
 (10.0, 0.7853981633974483): 0.0024485613031397387,
 (10.0, 1.0471975511965979): 0.0017627895565971385}

PSI10 = {(0.0016854644889852319, 0.5235987755982989): 1.0590499586161553,
 (0.006182687855859216, 0.7853981633974483): 0.8031471579501954,
 (0.0067418579559409275, 0.5235987755982989): 1.0969625272985786,
 (0.01685464488985232, 0.5235987755982989): 1.187704357873552,
 (0.017111375730250605, 1.0471975511965979): 0.5467737424765619,
 (0.024730751423436864, 0.7853981633974483): 0.8599140213487905,
 (0.030338360801734174, 0.5235987755982989): 1.3897280365576352,
 (0.06182687855859216, 0.7853981633974483): 0.9957584839682736,
 (0.06844550292100242, 1.0471975511965979): 0.6211234928943411,
 (0.11128838140546589, 0.7853981633974483): 1.2984294840625443,
 (0.17111375730250603, 1.0471975511965979): 0.8002148733151286,
 (0.30800476314451086, 1.0471975511965979): 1.2035248490907946}

SYMMETRIC_PSI0 = {(0.001, 0.5235987755982988): 1.0454738050032812,
 (0.001, 0.7853981633974483): 0.7846921373957523,
 (0.001, 1.0471975511965976): 0.5232656879320232,
 (0.1, 0.5235987755982988): 0.9226333136368925,
 (0.1, 0.7853981633974483): 0.7235236896240654,
 (0.1, 1.0471975511965976): 0.49250826819000526,
 (2.0, 0.5235987755982988): 0.374720344296382,
 (2.0, 0.7853981633974483): 0.3130074327368796,
 (2.0, 1.0471975511965976): 0.22567678694152163}

JOIN_C = {(0.01, 1.3, 1.0): 0.6304511086460051,
 (0.05, 1.2, 0.9): 0.6218390225700461,
 (0.1, 0.9, 0.9): 0.6848772681864596,
 (0.2, 0.4, 0.9): 0.9393850541781246,
 (0.5, -0.3, 0.8): 1.2006203763411556,
 (1.0, 1.4, 0.2): 0.9809832056121041,
 (3.0, -1.2, 0.3): 1.017997768651493}

