from gsp4_local_zeta.cli import main


main()
